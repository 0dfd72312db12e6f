// Exercise
import java.util.ArrayList;
import java.util.Random;

/**
 * Quiz194 program.
 */
public class Quiz194 {
  public static int absolute(int n) {
    return n < 0 ? -n : n;
  }

  public static long fact(int n) {
    if (n <= 1) {
      return 1;
    }
    return n * fact(n - 1);
  }

  public static int safeParse(String text) {
    try {
      return Integer.parseInt(text.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  static ArrayList<Integer> filterEven(int[] nums) {
    ArrayList<Integer> result = new ArrayList<>();
    for (int v : nums) {
      if (v % 2 == 0) {
        result.add(v);
      }
    }
    return result;
  }

  static int findMax(int[] nums) {
    int best = nums[0];
    for (int idx = 1; idx < nums.length; idx++) {
      if (nums[idx] > best) {
        best = nums[idx];
      }
    }
    return best;
  }

  static int countVowels(String text) {
    int found = 0;
    for (int idx = 0; idx < text.length(); idx++) {
      char ch = Character.toLowerCase(text.charAt(idx));
      switch (ch) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
        found++;
        break;
        default:
        break;
      }
    }
    return found;
  }

  static int[] randomFill(int size) {
    Random rand = new Random(42);
    int[] nums = new int[size];
    for (int idx = 0; idx < size; idx++) {
      nums[idx] = rand.nextInt(100);
    }
    return nums;
  }

  public static int digitSum(int n) {
    int result = 0;
    while (n > 0) {
      result += n % 10;
      n /= 10;
    }
    return result;
  }

  public static int find(int[] nums, int target) {
    for (int idx = 0; idx < nums.length; idx++) {
      if (nums[idx] == target) {
        return idx;
      }
    }
    return -1;
  }

  public static void main(String[] args) {
    int[] numbers = {4, 8, 7, 7, 3, 6};
    System.out.println(absolute(5));
    System.out.println(fact(9));
    int parsed = safeParse(" 7 ");
    System.out.println(parsed);
    ArrayList<Integer> even = filterEven(numbers);
    System.out.println(even.size() + " even numbers");
    int top = findMax(numbers);
    System.out.println("Max is " + top);
    System.out.println(countVowels("hello world"));
    int[] random = randomFill(3);
    System.out.println(random.length);
    System.out.println("Digits: " + digitSum(28273));
    int pos = find(numbers, 5);
    System.out.println("Found at " + pos);
  }
}
