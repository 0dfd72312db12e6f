/**
 * Inventory164 program.
 */
public class Inventory164 {
  public static boolean palindrome(String word) {
    int left = 0;
    int right = word.length() - 1;
    while (left < right) {
      if (word.charAt(left) != word.charAt(right)) {
        return false;
      }
      left++;
      right--;
    }
    return true;
  }

  public static void drawStars(int size) {
    for (int row = 1; row <= size; row++) {
      for (int col = 0; col < row; col++) {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  public static void main(String[] args) {
    System.out.println(palindrome("racecar"));
    drawStars(6);
  }
}
