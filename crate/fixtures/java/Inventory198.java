import java.util.Random;
import java.util.Scanner;

public class Inventory198 {
  static final int LIMIT = 29;

  public static int totalOf(int[] nums) {
    int sum = 0;
    for (int j = 0; j < nums.length; j++) {
      sum += nums[j];
    }
    return sum;
  }

  static int greatestDivisor(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  public static int digitSum(int num) {
    int sum = 0;
    while (num > 0) {
      sum += num % 10;
      num /= 10;
    }
    return sum;
  }

  public static void pattern(int height) {
    for (int row = 1; row <= height; row++) {
      for (int col = 0; col < row; col++) {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  static int[] fillRandom(int size) {
    Random rand = new Random(42);
    int[] nums = new int[size];
    for (int j = 0; j < size; j++) {
      nums[j] = rand.nextInt(100);
    }
    return nums;
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {6, 2, 8};
    for (int i = 0; i < LIMIT; i += 10) {
      System.out.println("Step " + i);
    }
    System.out.println("Sum: " + totalOf(numbers));
    System.out.println("GCD: " + greatestDivisor(23, 9));
    System.out.println("Digits: " + digitSum(97768));
    pattern(3);
    int[] random = fillRandom(8);
    System.out.println(random.length);
    sc.close();
  }
}
